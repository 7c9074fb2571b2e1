import { Component } from '@angular/core';
import { map } from 'rxjs';

@Component({ selector: 'app-prices' })
export class PricesComponent {
  ngOnInit(): void {
    this.prices.stream().pipe(map(p => p.value)).subscribe(v => this.push(v));
  }
}
