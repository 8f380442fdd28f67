import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api";
import { ChatApp } from "../src/app";
import flagship from "./fixtures/chat_acrylaldehyde.json";

function mountApp(): ChatApp {
  document.body.innerHTML = `
    <section id="transcript"></section>
    <form id="chat-form">
      <input id="chat-input" type="text" />
      <button id="chat-send" type="submit">Send</button>
    </form>`;
  return new ChatApp(
    {
      form: document.querySelector("#chat-form") as HTMLFormElement,
      input: document.querySelector("#chat-input") as HTMLInputElement,
      sendButton: document.querySelector("#chat-send") as HTMLButtonElement,
      transcriptContainer: document.querySelector("#transcript") as HTMLElement,
    },
    new ApiClient(""),
  );
}

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

const input = () => document.querySelector("#chat-input") as HTMLInputElement;
const send = () => document.querySelector("#chat-send") as HTMLButtonElement;

describe("ChatApp", () => {
  beforeEach(() => {
    vi.restoreAllMocks();
  });
  afterEach(() => {
    vi.unstubAllGlobals();
  });

  it("disables send for empty and whitespace-only input", () => {
    mountApp();
    expect(send().disabled).toBe(true);
    input().value = "   ";
    input().dispatchEvent(new Event("input"));
    expect(send().disabled).toBe(true);
    input().value = "a question";
    input().dispatchEvent(new Event("input"));
    expect(send().disabled).toBe(false);
  });

  it("renders the flagship response from the API", async () => {
    const fetchMock = vi.fn().mockResolvedValue(jsonResponse(flagship));
    vi.stubGlobal("fetch", fetchMock);
    const app = mountApp();

    await app.sendQuestion(
      "What are the potential health impacts, particularly on the heart, of exposure to Acrylaldehyde?",
    );

    expect(fetchMock).toHaveBeenCalledWith(
      "/api/chat",
      expect.objectContaining({ method: "POST" }),
    );
    const turn = document.querySelector(".turn") as HTMLElement;
    expect(turn.classList.contains("pending")).toBe(false);
    expect(turn.querySelectorAll(".results-table tr").length).toBe(14);
    expect(turn.querySelector(".cypher-text")?.textContent).toBe(flagship.cypher);
  });

  it("allows only one in-flight request per session", async () => {
    let release: (r: Response) => void = () => {};
    const gate = new Promise<Response>((resolve) => {
      release = resolve;
    });
    const fetchMock = vi.fn().mockReturnValue(gate);
    vi.stubGlobal("fetch", fetchMock);
    const app = mountApp();

    const first = app.sendQuestion("first question");
    expect(app.pending).toBe(true);
    expect(send().disabled).toBe(true);
    await app.sendQuestion("second question while pending");
    expect(fetchMock).toHaveBeenCalledTimes(1);

    release(jsonResponse(flagship));
    await first;
    expect(app.pending).toBe(false);
    expect(document.querySelectorAll(".turn").length).toBe(1);
  });

  it("renders a retryable notice on network failure, preserving the transcript", async () => {
    const fetchMock = vi
      .fn()
      .mockResolvedValueOnce(jsonResponse(flagship))
      .mockRejectedValueOnce(new TypeError("network down"))
      .mockResolvedValueOnce(jsonResponse(flagship));
    vi.stubGlobal("fetch", fetchMock);
    const app = mountApp();

    await app.sendQuestion("works");
    await app.sendQuestion("fails");

    const turns = document.querySelectorAll(".turn");
    expect(turns.length).toBe(2);
    const failed = turns[1] as HTMLElement;
    expect(failed.classList.contains("failed")).toBe(true);
    expect(failed.querySelector(".failed-note")?.textContent).toContain(
      "could not reach the assistant",
    );

    (failed.querySelector(".retry-button") as HTMLButtonElement).click();
    await vi.waitFor(() => {
      expect(document.querySelectorAll(".turn .results-table").length).toBe(2);
    });
    expect(document.querySelectorAll(".turn").length).toBe(2);
  });

  it("labels 502 failures as backend unavailable", async () => {
    const fetchMock = vi
      .fn()
      .mockResolvedValue(jsonResponse({ code: "backend_unavailable", message: "down" }, 502));
    vi.stubGlobal("fetch", fetchMock);
    const app = mountApp();

    await app.sendQuestion("anything");
    expect(document.querySelector(".failed-note")?.textContent).toContain(
      "assistant backend unavailable",
    );
  });

  it("refused turns show the refusal and no panels", async () => {
    const refusal = {
      answer: "I don't know.",
      cypher: null,
      rows: null,
      refused: true,
      trace_id: "x",
    };
    vi.stubGlobal("fetch", vi.fn().mockResolvedValue(jsonResponse(refusal)));
    const app = mountApp();

    await app.sendQuestion("mystery");
    const turn = document.querySelector(".turn") as HTMLElement;
    expect(turn.querySelector(".refusal-badge")).not.toBeNull();
    expect(turn.querySelector(".panel")).toBeNull();
  });
});
