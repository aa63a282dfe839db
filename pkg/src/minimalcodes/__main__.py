from minimalcodes.cli import main

raise SystemExit(main())
