import sys

from goodstein.cli import main

sys.exit(main())
