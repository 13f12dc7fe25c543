"""Entry point for ``python -m tmsverify``."""

import sys

from tmsverify.cli.main import main

sys.exit(main())
