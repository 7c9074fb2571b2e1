import { Component } from '@angular/core';

@Component({ selector: 'app-status' })
export class StatusComponent {
  ngOnInit(): void {
    this.status.changes().subscribe(s => this.apply(s));
    this.refresh = setInterval(() => this.poke(), 60000);
  }
}
