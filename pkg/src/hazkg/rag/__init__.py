from hazkg.rag.embedding import (
    EMBEDDING_DIM,
    BackendUnavailable,
    RemoteEmbeddingClient,
    TrigramHashEmbedder,
    cosine,
)
from hazkg.rag.exemplars import (
    EmptyStore,
    Exemplar,
    ExemplarError,
    ExemplarStore,
    rank_exemplars,
    select_few_shots,
)
from hazkg.rag.llm import RemoteChatClient, ScriptedStubClient, StubScriptMiss
from hazkg.rag.pipeline import (
    REFUSAL_TEXT,
    ChatResponse,
    EmptyQuestion,
    LlmSummarizer,
    NoQueryInReply,
    Refusal,
    TemplateSummarizer,
    ValidatedQuery,
    answer_turn,
    build_prompt,
    extract_query,
    generate_query,
    summarize_offline,
    validate_or_refuse,
)
from hazkg.rag.prompt import PromptContext

__all__ = [
    "BackendUnavailable",
    "ChatResponse",
    "EMBEDDING_DIM",
    "EmptyQuestion",
    "EmptyStore",
    "Exemplar",
    "ExemplarError",
    "ExemplarStore",
    "LlmSummarizer",
    "NoQueryInReply",
    "PromptContext",
    "REFUSAL_TEXT",
    "Refusal",
    "RemoteChatClient",
    "RemoteEmbeddingClient",
    "ScriptedStubClient",
    "StubScriptMiss",
    "TemplateSummarizer",
    "TrigramHashEmbedder",
    "ValidatedQuery",
    "answer_turn",
    "build_prompt",
    "cosine",
    "extract_query",
    "generate_query",
    "rank_exemplars",
    "select_few_shots",
    "summarize_offline",
    "validate_or_refuse",
]
