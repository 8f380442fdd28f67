/**
 * Chat form wiring: one in-flight request at a time, send disabled for
 * blank input and while pending, failed turns render an inline retryable
 * notice without losing the transcript.
 */

import { ApiClient, ApiError } from "./api";
import { Transcript } from "./transcript";

export interface AppHandles {
  form: HTMLFormElement;
  input: HTMLInputElement | HTMLTextAreaElement;
  sendButton: HTMLButtonElement;
  transcriptContainer: HTMLElement;
}

export class ChatApp {
  private readonly transcript: Transcript;
  private inFlight = false;

  constructor(
    private readonly handles: AppHandles,
    private readonly api: ApiClient,
  ) {
    this.transcript = new Transcript(handles.transcriptContainer);
    handles.form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.sendCurrentInput();
    });
    handles.input.addEventListener("input", () => this.syncControls());
    this.syncControls();
  }

  get pending(): boolean {
    return this.inFlight;
  }

  syncControls(): void {
    const blank = this.handles.input.value.trim().length === 0;
    this.handles.sendButton.disabled = this.inFlight || blank;
  }

  async sendCurrentInput(): Promise<void> {
    const text = this.handles.input.value.trim();
    if (!text || this.inFlight) {
      return;
    }
    this.handles.input.value = "";
    await this.sendQuestion(text);
  }

  async sendQuestion(question: string): Promise<void> {
    if (this.inFlight) {
      return;
    }
    this.inFlight = true;
    this.syncControls();
    const turn = this.transcript.appendPending(question);
    try {
      const response = await this.api.chat(question);
      this.transcript.completeTurn(turn, response);
    } catch (error) {
      const message =
        error instanceof ApiError && error.status === 502
          ? "assistant backend unavailable."
          : "could not reach the assistant.";
      this.transcript.failTurn(turn, message, () => {
        turn.remove();
        void this.sendQuestion(question);
      });
    } finally {
      this.inFlight = false;
      this.syncControls();
    }
  }
}
