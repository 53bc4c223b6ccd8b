# allows "python -m spinsqueezepython <command> ...".
import sys

from spinsqueezepython.sscli import main

sys.exit(main())
