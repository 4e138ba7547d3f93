import { afterEach, describe, expect, it, vi } from "vitest";

import { ServiceClient, ServiceError } from "../src/client.js";
import { newSession } from "../src/session.js";

afterEach(() => {
  vi.restoreAllMocks();
});

function jsonResponse(body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status: 200,
    headers: { "content-type": "application/json" },
  });
}

describe("ServiceClient", () => {
  it("posts the session profile to /interproximate", async () => {
    const fetchMock = vi.fn(async () =>
      jsonResponse({ points: [[0, 0]], sizes: [10], flagged_indices: [[]] })
    );
    vi.stubGlobal("fetch", fetchMock);
    const client = new ServiceClient("");
    const session = newSession();
    await client.interproximate(session);
    expect(fetchMock).toHaveBeenCalledOnce();
    const [url, init] = fetchMock.mock.calls[0] as unknown as [string, RequestInit];
    expect(url).toBe("/interproximate");
    const body = JSON.parse(init.body as string);
    expect(body.N).toBe(1);
    expect(body.profile.vertex_alpha.length).toBe(10);
    expect(body.polygon.topology).toBe("closed");
  });

  it("latest request aborts the previous one", async () => {
    const seenSignals: AbortSignal[] = [];
    vi.stubGlobal(
      "fetch",
      vi.fn((_url: string, init: RequestInit) => {
        seenSignals.push(init.signal as AbortSignal);
        return new Promise<Response>((resolve, reject) => {
          (init.signal as AbortSignal).addEventListener("abort", () =>
            reject(new DOMException("aborted", "AbortError"))
          );
          setTimeout(() => resolve(jsonResponse({ points: [] })), 50);
        });
      })
    );
    const client = new ServiceClient("");
    const session = newSession();
    const first = client.refine(session).catch((err) => err);
    const second = client.refine(session);
    const firstResult = await first;
    expect(firstResult).toBeInstanceOf(DOMException);
    expect((firstResult as DOMException).name).toBe("AbortError");
    await expect(second).resolves.toEqual({ points: [] });
    expect(seenSignals[0].aborted).toBe(true);
    expect(seenSignals[1].aborted).toBe(false);
  });

  it("non-2xx responses raise ServiceError with status", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(async () => new Response("bad profile", { status: 400 }))
    );
    const client = new ServiceClient("");
    await expect(client.refine(newSession())).rejects.toThrowError(ServiceError);
    await expect(client.refine(newSession())).rejects.toMatchObject({ status: 400 });
  });
});
