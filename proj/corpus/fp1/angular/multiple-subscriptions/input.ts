import { Component } from '@angular/core';
import { map } from 'rxjs';

@Component({ selector: 'app-board' })
export class BoardComponent {
  ngOnInit(): void {
    this.board.cells().pipe(map(c => c.live)).subscribe(c => this.draw(c));
    this.board.errors().subscribe(e => this.warn(e));
  }
}
