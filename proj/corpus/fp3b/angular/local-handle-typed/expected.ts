import { Component } from '@angular/core';

@Component({ selector: 'app-clock' })
export class ClockComponent {
  private intervalId?: number;
  ngOnInit(): void {
    const id = this.intervalId = setInterval(() => this.tick(), 1000);
    this.register(id);
  }
  ngOnDestroy() {
    clearInterval(this.intervalId);
  }
}
