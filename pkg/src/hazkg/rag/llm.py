"""Chat-completion clients: a remote HTTP backend and a scripted stub.

The stub reads an ordered script of matcher/reply pairs from a JSONL
file: the first entry whose `match` string occurs in the prompt wins, an
empty matcher matches everything. That keeps the whole pipeline runnable
and byte-deterministic with no network. Matchers see the entire rendered
prompt, which embeds the few-shot exemplar questions, so scripts should
anchor on the final question line ("User input: ...") rather than on
words an exemplar might also contain.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

import httpx

from hazkg.rag.embedding import BackendUnavailable


class StubScriptMiss(LookupError):
    """No script entry matched the prompt; the script file needs a fallback."""


@dataclass
class ScriptedStubClient:
    entries: list[tuple[str, str]]
    offline: bool = True

    @classmethod
    def from_file(cls, path: str | os.PathLike) -> "ScriptedStubClient":
        entries: list[tuple[str, str]] = []
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                    entries.append((record["match"], record["reply"]))
                except (json.JSONDecodeError, KeyError, TypeError) as exc:
                    raise ValueError(f"{path}:{lineno}: bad stub entry: {exc}") from exc
        return cls(entries)

    def complete(self, prompt: str) -> str:
        for match, reply in self.entries:
            if match == "" or match in prompt:
                return reply
        raise StubScriptMiss("no stub script entry matches the prompt")


class RemoteChatClient:
    """Client for a chat-completions endpoint (POST {model, messages} ->
    {choices: [{message: {content}}]}). The API key is read from the
    configured environment variable at call time."""

    offline = False

    def __init__(self, endpoint: str, model: str, api_key_env: str = "",
                 timeout: float = 60.0, transport: httpx.BaseTransport | None = None):
        self.endpoint = endpoint
        self.model = model
        self.api_key_env = api_key_env
        self._client = httpx.Client(timeout=timeout, transport=transport)

    def complete(self, prompt: str) -> str:
        headers = {}
        if self.api_key_env:
            key = os.environ.get(self.api_key_env, "")
            if not key:
                raise BackendUnavailable(f"environment variable {self.api_key_env} is not set")
            headers["Authorization"] = f"Bearer {key}"
        body = {"model": self.model, "messages": [{"role": "user", "content": prompt}]}
        try:
            response = self._client.post(self.endpoint, json=body, headers=headers)
            response.raise_for_status()
            payload = response.json()
            return payload["choices"][0]["message"]["content"]
        except (httpx.HTTPError, KeyError, IndexError, TypeError, ValueError) as exc:
            raise BackendUnavailable(f"chat backend failed: {exc}") from exc
