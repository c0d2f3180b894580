import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from src.algebra.bipoly import BiPoly
from src.cli.parser import parse_generators
from src.config.exception import AppException, ParseError
from src.config.logger import setup_logger

logger = setup_logger("InputLoader", "input_loader.log")


class ParsedInput(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    generators: List[BiPoly]
    texts: List[str]
    source: str


class InputLoader:
    def read_texts(self, path: str) -> List[str]:
        """
        Read generator strings from a file.

        A file whose first non-blank character is '{' is read as JSON
        {"generators": [...]}; anything else is plain text with one polynomial
        per non-blank line.
        """
        input_path = Path(path)
        if not input_path.exists():
            raise AppException(f"input file not found: {path}", sys)

        content = input_path.read_text(encoding="utf-8")
        if content.lstrip().startswith("{"):
            try:
                document = json.loads(content)
            except json.JSONDecodeError as e:
                raise ParseError(f"malformed JSON in {path}: {e.msg}", position=e.pos)
            texts = document.get("generators") if isinstance(document, dict) else None
            if not isinstance(texts, list) or not all(isinstance(t, str) for t in texts):
                raise ParseError(f"{path}: expected {{\"generators\": [\"...\", ...]}}")
            logger.info(f"Loaded {len(texts)} generators from JSON file {path}")
            return texts

        texts = [line.strip() for line in content.splitlines() if line.strip()]
        logger.info(f"Loaded {len(texts)} generators from text file {path}")
        return texts

    def load(self, path: Optional[str] = None, inline: Sequence[str] = ()) -> ParsedInput:
        """Inline generators take precedence over a file."""
        if inline:
            texts, source = list(inline), "inline"
        elif path:
            texts, source = self.read_texts(path), path
        else:
            raise AppException("no generators given: pass an input file or -g/--generator", sys)
        return ParsedInput(generators=parse_generators(texts), texts=texts, source=source)
