import { Component } from '@angular/core';
import { Subject, takeUntil } from 'rxjs';

@Component({ selector: 'app-race' })
export class RaceComponent {
  private readonly destroy$2 = new Subject<void>();
  readonly destroy$ = new Subject<void>();

  ngOnInit(): void {
    this.race.ticks().pipe(takeUntil(this.destroy$2)).subscribe(t => this.lap(t));
  }

  ngOnDestroy(): void {
    this.destroy$.next();
    this.destroy$.complete();
    this.destroy$2.next();
    this.destroy$2.complete();
  }
}
