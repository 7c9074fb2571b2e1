import { Component } from '@angular/core';

@Component({ selector: 'app-feed' })
export class FeedComponent {
  ngOnInit() {
    this.feed.stream().subscribe(v => this.items.push(v));
  }
}
