// Hash routing with deep-link parameters, e.g. `#/review?target=RA…`.

export interface Route {
  page: string;
  params: Record<string, string>;
}

export function parseRoute(hash: string): Route {
  const stripped = hash.replace(/^#\/?/, "");
  const [path, query = ""] = stripped.split("?", 2);
  const params: Record<string, string> = {};
  for (const pair of query.split("&")) {
    if (!pair) continue;
    const [key, value = ""] = pair.split("=", 2);
    params[decodeURIComponent(key)] = decodeURIComponent(value);
  }
  return { page: path || "dashboard", params };
}

export function routeHash(page: string, params: Record<string, string> = {}): string {
  const query = Object.entries(params)
    .map(([k, v]) => `${encodeURIComponent(k)}=${encodeURIComponent(v)}`)
    .join("&");
  return query ? `#/${page}?${query}` : `#/${page}`;
}

export function onRouteChange(handler: (route: Route) => void): void {
  const fire = () => handler(parseRoute(window.location.hash));
  window.addEventListener("hashchange", fire);
  fire();
}
