import sys

from fsplit.cli import main

sys.exit(main())
