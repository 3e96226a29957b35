import { afterEach, describe, expect, it, vi } from "vitest";
import { ApiClient, ApiFault } from "../src/api.js";

interface Captured {
  url: string;
  init: RequestInit | undefined;
}

function okResponse(payload: unknown): Response {
  return { ok: true, json: async () => payload } as unknown as Response;
}

function errorResponse(payload: unknown): Response {
  return { ok: false, status: 400, json: async () => payload } as unknown as Response;
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("api client", () => {
  it("builds the overview query from the parameters", async () => {
    const calls: Captured[] = [];
    vi.stubGlobal("fetch", async (url: string, init?: RequestInit) => {
      calls.push({ url, init });
      return okResponse({ nodes: [], edges: [], stats: { nodes: 0, values: 0 } });
    });
    const client = new ApiClient();
    await client.overview("primary-school", { t: 3, attr: "class", limit: 60, seed: 7 });
    expect(calls[0].url).toBe("/api/primary-school/overview?t=3&attr=class&limit=60&seed=7");
  });

  it("posts explore requests as json with the service's field names", async () => {
    const calls: Captured[] = [];
    vi.stubGlobal("fetch", async (url: string, init?: RequestInit) => {
      calls.push({ url, init });
      return okResponse({ skyline: [], top_k: [] });
    });
    const client = new ApiClient("http://example.test");
    await client.skyline("d", {
      event: "stability",
      attributes: ["gender"],
      source_combo: ["F"],
      target_combo: ["F"],
      top_k: 5,
    });
    expect(calls[0].url).toBe("http://example.test/api/d/explore/skyline");
    expect(calls[0].init?.method).toBe("POST");
    const body = JSON.parse(String(calls[0].init?.body));
    expect(body).toEqual({
      event: "stability",
      attributes: ["gender"],
      source_combo: ["F"],
      target_combo: ["F"],
      top_k: 5,
    });
  });

  it("turns an error body into an ApiFault with the wire code", async () => {
    vi.stubGlobal("fetch", async () =>
      errorResponse({ code: "domain_error", message: "instant out of range" }),
    );
    const client = new ApiClient();
    const err = await client.stats("d").catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiFault);
    expect((err as ApiFault).code).toBe("domain_error");
    expect((err as ApiFault).message).toBe("instant out of range");
  });

  it("aborts the in-flight request when the same view issues a new one", async () => {
    const signals: AbortSignal[] = [];
    let release: (() => void) | undefined;
    vi.stubGlobal("fetch", (url: string, init?: RequestInit) => {
      signals.push(init!.signal!);
      return new Promise<Response>((resolve, reject) => {
        const signal = init!.signal!;
        signal.addEventListener("abort", () =>
          reject(new DOMException("aborted", "AbortError")),
        );
        release = () => resolve(okResponse({ hits: [] }));
      });
    });
    const client = new ApiClient();
    const req = {
      event: "stability",
      attributes: ["g"],
      source_combo: ["a"],
      target_combo: ["a"],
      k: 1,
    };
    const first = client.threshold("d", req);
    const second = client.threshold("d", req);
    expect(signals[0].aborted).toBe(true);
    expect(signals[1].aborted).toBe(false);
    await expect(first).rejects.toThrow("aborted");
    release!();
    await expect(second).resolves.toEqual({ hits: [] });
  });

  it("does not cancel across different views", async () => {
    const signals: AbortSignal[] = [];
    vi.stubGlobal("fetch", async (url: string, init?: RequestInit) => {
      signals.push(init!.signal!);
      return okResponse([]);
    });
    const client = new ApiClient();
    await Promise.all([client.listDatasets(), client.stats("d")]);
    expect(signals[0].aborted).toBe(false);
    expect(signals[1].aborted).toBe(false);
  });
});
