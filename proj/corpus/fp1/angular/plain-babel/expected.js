import { Component } from '@angular/core';
import { Subject, takeUntil } from 'rxjs';

@Component({ selector: 'app-feed' })
export class FeedComponent {
  constructor() {
    this.destroy$ = new Subject();
  }
  ngOnInit() {
    this.feed.stream().pipe(takeUntil(this.destroy$)).subscribe(v => this.items.push(v));
  }
  ngOnDestroy() {
    this.destroy$.next();
    this.destroy$.complete();
  }
}
