import { ApiClient } from "./api";
import { ChatApp } from "./app";
import { renderSchemaSidebar } from "./sidebar";
import { renderBackendStatus } from "./status";
import "./styles.css";

declare global {
  interface Window {
    HAZKG_API_BASE?: string;
  }
}

function apiBase(): string {
  const fromQuery = new URLSearchParams(window.location.search).get("api");
  return fromQuery ?? window.HAZKG_API_BASE ?? "";
}

function bootstrap(): void {
  const api = new ApiClient(apiBase());
  new ChatApp(
    {
      form: document.querySelector("#chat-form") as HTMLFormElement,
      input: document.querySelector("#chat-input") as HTMLInputElement,
      sendButton: document.querySelector("#chat-send") as HTMLButtonElement,
      transcriptContainer: document.querySelector("#transcript") as HTMLElement,
    },
    api,
  );
  const sidebar = document.querySelector("#schema-sidebar") as HTMLElement;
  void renderSchemaSidebar(sidebar, api);
  const status = document.querySelector("#backend-status") as HTMLElement;
  void renderBackendStatus(status, api);
}

bootstrap();
