import { Component } from '@angular/core';

@Component({ selector: 'app-health' })
export class HealthComponent {
  private poll?: number;

  ngOnInit(): void {
    this.poll = setInterval(() => this.ping(), 30000);
  }
  ngOnDestroy() {
    clearInterval(this.poll);
  }
}
