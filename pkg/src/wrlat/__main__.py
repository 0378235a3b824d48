import sys

from .survey_cli import main

sys.exit(main())
