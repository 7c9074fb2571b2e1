import { Component } from '@angular/core';
import { Subject, takeUntil } from 'rxjs';

@Component({ selector: 'app-status' })
export class StatusComponent {
  private readonly destroy$ = new Subject<void>();
  ngOnInit(): void {
    this.status.changes().pipe(takeUntil(this.destroy$)).subscribe(s => this.apply(s));
    this.refresh = setInterval(() => this.poke(), 60000);
  }
  ngOnDestroy() {
    this.destroy$.next();
    this.destroy$.complete();
    clearInterval(this.refresh);
  }
}
