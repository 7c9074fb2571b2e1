import { Component } from '@angular/core';
import { Subject, takeUntil } from 'rxjs';

@Component({
  selector: 'app-ticker',
  template: '<span>{{ last }}</span>',
})
export class TickerComponent {
  private readonly destroy$ = new Subject<void>();
  last = 0;

  constructor(private feed: FeedService) {}

  ngOnInit(): void {
    this.feed.quotes().pipe(takeUntil(this.destroy$)).subscribe(q => (this.last = q.value));
  }
  ngOnDestroy() {
    this.destroy$.next();
    this.destroy$.complete();
  }
}
