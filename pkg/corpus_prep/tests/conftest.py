from pathlib import Path

FIXTURES = Path(__file__).resolve().parent / "fixtures"
PRIMARY_FIXTURES = Path(__file__).resolve().parent.parent.parent / "fixtures"

CONFERENCE_NAMES = ["cmt", "conference", "confOf", "edas", "ekaw", "iasted", "sigkdd"]
