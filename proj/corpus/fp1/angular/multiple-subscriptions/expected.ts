import { Component } from '@angular/core';
import { map, Subject, takeUntil } from 'rxjs';

@Component({ selector: 'app-board' })
export class BoardComponent {
  private readonly destroy$ = new Subject<void>();
  ngOnInit(): void {
    this.board.cells().pipe(map(c => c.live), takeUntil(this.destroy$)).subscribe(c => this.draw(c));
    this.board.errors().pipe(takeUntil(this.destroy$)).subscribe(e => this.warn(e));
  }
  ngOnDestroy() {
    this.destroy$.next();
    this.destroy$.complete();
  }
}
