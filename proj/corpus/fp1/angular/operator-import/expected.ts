import { Component } from '@angular/core';
import { Subject } from 'rxjs';
import { takeUntil } from 'rxjs/operators';

@Component({ selector: 'app-live' })
export class LiveComponent {
  private readonly destroy$ = new Subject<void>();
  ngOnInit(): void {
    this.live.watch().pipe(takeUntil(this.destroy$)).subscribe(w => this.apply(w));
  }
  ngOnDestroy() {
    this.destroy$.next();
    this.destroy$.complete();
  }
}
