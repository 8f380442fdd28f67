import { beforeEach, describe, expect, it } from "vitest";

import type { ChatResponse } from "../src/api";
import { ROW_DISPLAY_CAP, Transcript, renderRowsTable } from "../src/transcript";
import flagship from "./fixtures/chat_acrylaldehyde.json";

const flagshipResponse = flagship as ChatResponse;

describe("Transcript", () => {
  let container: HTMLElement;
  let transcript: Transcript;

  beforeEach(() => {
    document.body.innerHTML = '<section id="t"></section>';
    container = document.querySelector("#t") as HTMLElement;
    transcript = new Transcript(container);
  });

  it("renders the flagship turn: answer, query panel, 13-row table", () => {
    const turn = transcript.appendPending("heart impacts of acrylaldehyde?");
    transcript.completeTurn(turn, flagshipResponse);

    expect(turn.querySelector(".turn-answer")?.textContent).toContain(
      "Acrylaldehyde can potentially impact the heart",
    );
    const cypher = turn.querySelector(".cypher-text")?.textContent ?? "";
    expect(cypher).toBe(flagshipResponse.cypher);
    expect(cypher).toContain("MATCH (o:Organ {Organ: 'heart'})");

    const tableRows = turn.querySelectorAll(".results-table tr");
    expect(tableRows.length).toBe(1 + 13); // header + data rows
    const headers = turn.querySelectorAll(".results-table th");
    expect(headers.length).toBe(flagshipResponse.rows!.columns.length);
    for (const row of Array.from(turn.querySelectorAll(".results-table tr")).slice(1)) {
      expect(row.querySelectorAll("td").length).toBe(headers.length);
    }
    expect(turn.querySelector(".refusal-badge")).toBeNull();
  });

  it("renders exactly the rows the API sent, no re-derivation", () => {
    const turn = transcript.appendPending("q");
    transcript.completeTurn(turn, flagshipResponse);
    const shown = Array.from(turn.querySelectorAll(".results-table tr"))
      .slice(1)
      .map((tr) => (tr.querySelector("td") as HTMLElement).textContent);
    expect(shown).toEqual(flagshipResponse.rows!.rows.map((r) => r[0]));
  });

  it("hides query and results panels on refused turns", () => {
    const turn = transcript.appendPending("unknown question");
    transcript.completeTurn(turn, {
      answer: "I don't know.",
      cypher: null,
      rows: null,
      refused: true,
      trace_id: "t1",
    });
    expect(turn.querySelector(".refusal-badge")?.textContent).toBe("refused");
    expect(turn.querySelector(".panel")).toBeNull();
    expect(turn.querySelector(".results-table")).toBeNull();
    expect(turn.querySelector(".turn-answer")?.textContent).toBe("I don't know.");
  });

  it("caps the rendered rows at 500 with a truncated banner", () => {
    const rows = Array.from({ length: 620 }, (_, i) => [`row ${i}`]);
    const body = renderRowsTable({ columns: ["c"], rows });
    expect(body.querySelectorAll("tr").length).toBe(1 + ROW_DISPLAY_CAP);
    expect(body.querySelector(".truncated-banner")?.textContent).toContain(
      "showing 500 of 620 rows",
    );
  });

  it("is append-only: completing one turn never removes earlier ones", () => {
    const first = transcript.appendPending("first");
    transcript.completeTurn(first, flagshipResponse);
    const second = transcript.appendPending("second");
    transcript.completeTurn(second, {
      answer: "I don't know.",
      cypher: null,
      rows: null,
      refused: true,
      trace_id: "t2",
    });
    const turns = container.querySelectorAll(".turn");
    expect(turns.length).toBe(2);
    expect(turns[0]?.querySelector(".turn-question")?.textContent).toBe("first");
    expect(turns[0]?.querySelector(".results-table")).not.toBeNull();
  });

  it("stamps each turn with a timestamp", () => {
    const fixed = new Date("2025-06-01T12:34:56");
    const stamped = new Transcript(container, () => fixed);
    const turn = stamped.appendPending("when?");
    expect(turn.querySelector(".turn-time")?.textContent).toBe(fixed.toLocaleTimeString());
  });
});
