import sys

from distbal.cli import main

sys.exit(main())
