import { Component } from '@angular/core';
import { Subject, takeUntil } from 'rxjs';

@Component({ selector: 'app-done' })
export class DoneComponent {
  private readonly destroy$ = new Subject<void>();

  ngOnInit(): void {
    this.bus.events().pipe(takeUntil(this.destroy$)).subscribe(e => this.on(e));
  }

  ngOnDestroy(): void {
    this.destroy$.next();
    this.destroy$.complete();
  }
}
