export function debounce(fn, ms) {
  let handle;
  return function (...args) {
    clearTimeout(handle);
    handle = setTimeout(() => fn(...args), ms);
  };
}
