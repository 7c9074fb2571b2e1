import { Component } from '@angular/core';

@Component({ selector: 'app-clock' })
export class ClockComponent {
  ngOnInit(): void {
    const id = setInterval(() => this.tick(), 1000);
    this.register(id);
  }
}
