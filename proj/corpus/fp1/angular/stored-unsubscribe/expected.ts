import { Component } from '@angular/core';

@Component({ selector: 'app-log' })
export class LogComponent {
  private sub;

  ngOnInit(): void {
    this.sub = this.log.lines().subscribe(l => this.buffer.push(l));
  }

  ngOnDestroy(): void {
    this.sub.unsubscribe();
  }
}
