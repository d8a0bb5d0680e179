"""Allow ``python -m quantumgraphs``."""

from .cli import main

raise SystemExit(main())
