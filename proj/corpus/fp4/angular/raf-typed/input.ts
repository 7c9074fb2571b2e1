import { Component } from '@angular/core';

@Component({ selector: 'app-gauge' })
export class GaugeComponent {
  private frame?: number;

  ngOnInit(): void {
    this.frame = requestAnimationFrame(() => this.paint());
  }
}
