import { Component } from '@angular/core';

@Component({
  selector: 'app-ticker',
  template: '<span>{{ last }}</span>',
})
export class TickerComponent {
  last = 0;

  constructor(private feed: FeedService) {}

  ngOnInit(): void {
    this.feed.quotes().subscribe(q => (this.last = q.value));
  }
}
