from listsource.cli import main

main()
