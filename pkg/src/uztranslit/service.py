"""Stateless JSON-over-HTTP transliteration service.

One immutable engine is built at startup and shared by every request;
handlers are pure, so arbitrary parallelism needs no coordination.
"""

from __future__ import annotations

import argparse
import os

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict, Field, field_validator

from .alphabets import Alphabet
from .cli import LEXICON_ENV_VAR
from .lexicon import load_lexicon_path
from .pipeline import Transliterator, TranslitOptions

#: Default cap on the UTF-8 size of the text field.
MAX_TEXT_BYTES = 1 << 20
_BODY_HEADROOM = 1 << 16


class TranslitRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    text: str
    source: str = Field(alias="from")
    to: str
    normalize: bool = True

    @field_validator("source", "to")
    @classmethod
    def _known_alphabet(cls, value: str) -> str:
        Alphabet.from_token(value)
        return value


class TranslitResponse(BaseModel):
    result: str


def create_app(
    lexicon_path: str | None = None,
    *,
    max_text_bytes: int = MAX_TEXT_BYTES,
) -> FastAPI:
    """Build the service around one freshly-loaded engine."""
    engine = Transliterator(load_lexicon_path(lexicon_path)) if lexicon_path else Transliterator()
    app = FastAPI(title="uztranslit", version="0.1.0")
    max_body = max_text_bytes + _BODY_HEADROOM

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request: Request, exc: RequestValidationError) -> JSONResponse:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err.get('loc', ()) if p != 'body')}: {err.get('msg')}"
            for err in exc.errors()
        )
        return JSONResponse({"error": problems or "invalid request"}, status_code=400)

    @app.middleware("http")
    async def _cap_body(request: Request, call_next):
        length = request.headers.get("content-length")
        if length is not None and length.isdigit() and int(length) > max_body:
            return JSONResponse({"error": "request body too large"}, status_code=413)
        return await call_next(request)

    @app.post("/api/transliterate", response_model=TranslitResponse)
    async def transliterate_endpoint(req: TranslitRequest):
        if len(req.text.encode("utf-8")) > max_text_bytes:
            return JSONResponse(
                {"error": f"text exceeds the {max_text_bytes}-byte limit"}, status_code=413
            )
        options = TranslitOptions(
            Alphabet.from_token(req.source),
            Alphabet.from_token(req.to),
            normalize_apostrophes=req.normalize,
        )
        return {"result": engine.transliterate(req.text, options)}

    @app.get("/health")
    async def health():
        return {"status": "ok", "lexicon_entries": len(engine.lexicon)}

    return app


def main() -> None:
    parser = argparse.ArgumentParser(prog="uztranslit-serve", description=__doc__)
    parser.add_argument("--port", type=int, default=8080)
    parser.add_argument("--bind", default="127.0.0.1")
    parser.add_argument("--lexicon", metavar="PATH",
                        help=f"exception lexicon override (or ${LEXICON_ENV_VAR})")
    args = parser.parse_args()

    import uvicorn

    app = create_app(args.lexicon or os.environ.get(LEXICON_ENV_VAR) or None)
    uvicorn.run(app, host=args.bind, port=args.port)


if __name__ == "__main__":
    main()
