import { Component } from '@angular/core';

@Component({ selector: 'app-banner' })
export class BannerComponent {
  private hideTimer?: number;

  ngOnInit(): void {
    this.hideTimer = setTimeout(() => this.hide(), 5000);
  }

  ngOnDestroy(): void {
    this.banner.release();
    clearTimeout(this.hideTimer);
  }
}
