import { Component } from '@angular/core';

@Component({ selector: 'app-live' })
export class LiveComponent {
  ngOnInit(): void {
    this.live.watch().subscribe(w => this.apply(w));
  }
}
