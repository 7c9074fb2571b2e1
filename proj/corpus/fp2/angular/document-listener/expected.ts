import { Component } from '@angular/core';

@Component({ selector: 'app-shortcuts' })
export class ShortcutsComponent {
  ngOnInit(): void {
    document.addEventListener('keyup', this.onKeyUp);
  }

  onKeyUp = (e: KeyboardEvent) => {
    this.route(e.key);
  };
  ngOnDestroy() {
    document.removeEventListener('keyup', this.onKeyUp);
  }
}
