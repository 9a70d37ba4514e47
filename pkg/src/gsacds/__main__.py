import sys

from gsacds.cli import main

sys.exit(main())
