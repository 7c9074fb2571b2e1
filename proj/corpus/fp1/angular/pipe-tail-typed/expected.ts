import { Component } from '@angular/core';
import { map, Subject, takeUntil } from 'rxjs';

@Component({ selector: 'app-prices' })
export class PricesComponent {
  private readonly destroy$ = new Subject<void>();
  ngOnInit(): void {
    this.prices.stream().pipe(map(p => p.value), takeUntil(this.destroy$)).subscribe(v => this.push(v));
  }
  ngOnDestroy() {
    this.destroy$.next();
    this.destroy$.complete();
  }
}
