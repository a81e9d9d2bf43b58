from gwblowup.main import main

main()
