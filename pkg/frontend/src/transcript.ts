/**
 * Transcript rendering: one ChatTurnView per question, append-only within
 * the session. A non-refused turn shows exactly the query and rows the
 * API returned, inside collapsible panels; refused turns show a badge and
 * no panels at all. Nothing is persisted across reloads.
 */

import type { ChatResponse, ResultRows } from "./api";

export const ROW_DISPLAY_CAP = 500;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function collapsiblePanel(label: string, body: HTMLElement): HTMLDetailsElement {
  const panel = el("details", "panel");
  panel.appendChild(el("summary", "panel-label", label));
  panel.appendChild(body);
  return panel;
}

export function renderRowsTable(rows: ResultRows): HTMLElement {
  const wrapper = el("div", "results-body");
  const table = el("table", "results-table");
  const head = el("tr");
  for (const column of rows.columns) {
    head.appendChild(el("th", undefined, column));
  }
  table.appendChild(head);
  const shown = rows.rows.slice(0, ROW_DISPLAY_CAP);
  for (const row of shown) {
    const tr = el("tr");
    // arity guard: render exactly one cell per column header
    for (let i = 0; i < rows.columns.length; i++) {
      tr.appendChild(el("td", undefined, row[i] ?? ""));
    }
    table.appendChild(tr);
  }
  wrapper.appendChild(table);
  if (rows.rows.length > ROW_DISPLAY_CAP) {
    wrapper.appendChild(
      el(
        "p",
        "truncated-banner",
        `truncated: showing ${ROW_DISPLAY_CAP} of ${rows.rows.length} rows`,
      ),
    );
  }
  return wrapper;
}

export class Transcript {
  constructor(
    private readonly container: HTMLElement,
    private readonly now: () => Date = () => new Date(),
  ) {}

  /** Render the user's question plus a pending placeholder; returns the turn element. */
  appendPending(question: string): HTMLElement {
    const turn = el("article", "turn pending");
    const header = el("header", "turn-header");
    header.appendChild(el("span", "turn-question", question));
    header.appendChild(el("time", "turn-time", this.now().toLocaleTimeString()));
    turn.appendChild(header);
    turn.appendChild(el("p", "turn-pending-note", "thinking…"));
    this.container.appendChild(turn);
    turn.scrollIntoView?.({ block: "end" });
    return turn;
  }

  /** Replace the pending placeholder with the assistant's answer. */
  completeTurn(turn: HTMLElement, response: ChatResponse): void {
    turn.classList.remove("pending", "failed");
    turn.querySelector(".turn-pending-note")?.remove();
    turn.querySelector(".turn-body")?.remove();

    const body = el("div", "turn-body");
    if (response.refused) {
      turn.classList.add("refused");
      body.appendChild(el("span", "refusal-badge", "refused"));
    }
    body.appendChild(el("p", "turn-answer", response.answer));

    // query and results panels exist only on non-refused turns
    if (!response.refused && response.cypher !== null) {
      const code = el("pre", "cypher-text");
      code.textContent = response.cypher;
      body.appendChild(collapsiblePanel("generated query", code));
    }
    if (!response.refused && response.rows !== null) {
      body.appendChild(
        collapsiblePanel(`results (${response.rows.rows.length} rows)`, renderRowsTable(response.rows)),
      );
    }
    turn.appendChild(body);
  }

  /** Render an inline failure notice with a retry control; transcript stays intact. */
  failTurn(turn: HTMLElement, message: string, onRetry: () => void): void {
    turn.classList.remove("pending");
    turn.classList.add("failed");
    turn.querySelector(".turn-pending-note")?.remove();
    turn.querySelector(".turn-body")?.remove();

    const body = el("div", "turn-body");
    const notice = el("p", "failed-note", message + " ");
    const retry = el("button", "retry-button", "retry");
    retry.type = "button";
    retry.addEventListener("click", onRetry);
    notice.appendChild(retry);
    body.appendChild(notice);
    turn.appendChild(body);
  }
}
