import { Component } from '@angular/core';

@Component({ selector: 'app-viewport' })
export class ViewportComponent {
  ngOnInit(): void {
    window.addEventListener('orientationchange', this.onFlip);
    this.frame = requestAnimationFrame(() => this.sync());
  }

  onFlip = () => {
    this.sync();
  };
}
