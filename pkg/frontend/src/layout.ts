// Deterministic force-directed layout.  Positions depend only on the node
// list, the edge list, and the seed, so re-rendering the same payload
// always produces the same picture.

export interface Point {
  x: number;
  y: number;
}

// mulberry32, good enough for scattering start positions
function makeRng(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function forceLayout(
  ids: string[],
  edges: Array<[string, string]>,
  width: number,
  height: number,
  seed = 1,
  iterations = 120,
): Map<string, Point> {
  const n = ids.length;
  const positions = new Map<string, Point>();
  if (n === 0) return positions;

  const rng = makeRng(seed);
  const index = new Map<string, number>();
  ids.forEach((id, i) => index.set(id, i));

  const xs = new Float64Array(n);
  const ys = new Float64Array(n);
  for (let i = 0; i < n; i++) {
    xs[i] = rng() * width;
    ys[i] = rng() * height;
  }

  const pairs: Array<[number, number]> = [];
  for (const [a, b] of edges) {
    const i = index.get(a);
    const j = index.get(b);
    if (i !== undefined && j !== undefined && i !== j) {
      pairs.push([i, j]);
    }
  }

  const area = width * height;
  const k = Math.sqrt(area / n);
  let temperature = width / 8;
  const cooling = temperature / (iterations + 1);

  const dx = new Float64Array(n);
  const dy = new Float64Array(n);

  for (let iter = 0; iter < iterations; iter++) {
    dx.fill(0);
    dy.fill(0);

    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let ddx = xs[i] - xs[j];
        let ddy = ys[i] - ys[j];
        let dist = Math.sqrt(ddx * ddx + ddy * ddy);
        if (dist < 0.01) {
          // overlapping points repel along a seed-determined direction
          ddx = (rng() - 0.5) * 0.1;
          ddy = (rng() - 0.5) * 0.1;
          dist = Math.sqrt(ddx * ddx + ddy * ddy);
        }
        const force = (k * k) / dist;
        const fx = (ddx / dist) * force;
        const fy = (ddy / dist) * force;
        dx[i] += fx;
        dy[i] += fy;
        dx[j] -= fx;
        dy[j] -= fy;
      }
    }

    for (const [i, j] of pairs) {
      const ddx = xs[i] - xs[j];
      const ddy = ys[i] - ys[j];
      const dist = Math.max(Math.sqrt(ddx * ddx + ddy * ddy), 0.01);
      const force = (dist * dist) / k;
      const fx = (ddx / dist) * force;
      const fy = (ddy / dist) * force;
      dx[i] -= fx;
      dy[i] -= fy;
      dx[j] += fx;
      dy[j] += fy;
    }

    for (let i = 0; i < n; i++) {
      const disp = Math.max(Math.sqrt(dx[i] * dx[i] + dy[i] * dy[i]), 0.01);
      const step = Math.min(disp, temperature);
      xs[i] += (dx[i] / disp) * step;
      ys[i] += (dy[i] / disp) * step;
      xs[i] = Math.min(width - 10, Math.max(10, xs[i]));
      ys[i] = Math.min(height - 10, Math.max(10, ys[i]));
    }
    temperature -= cooling;
  }

  for (let i = 0; i < n; i++) {
    positions.set(ids[i], { x: xs[i], y: ys[i] });
  }
  return positions;
}
