import { Component } from '@angular/core';
import { Subject } from 'rxjs';

@Component({ selector: 'app-race' })
export class RaceComponent {
  readonly destroy$ = new Subject<void>();

  ngOnInit(): void {
    this.race.ticks().subscribe(t => this.lap(t));
  }

  ngOnDestroy(): void {
    this.destroy$.next();
    this.destroy$.complete();
  }
}
