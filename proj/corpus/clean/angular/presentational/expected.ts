import { Component } from '@angular/core';

@Component({
  selector: 'app-chip',
  template: '<span class="chip">{{ label }}</span>',
})
export class ChipComponent {
  label = '';

  describe(): string {
    return 'chip:' + this.label;
  }
}
