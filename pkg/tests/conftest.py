from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def research_text() -> str:
    return (DATA / "research.txt").read_text(encoding="utf-8").strip()


@pytest.fixture(scope="session")
def education_text() -> str:
    return (DATA / "education.txt").read_text(encoding="utf-8").strip()
