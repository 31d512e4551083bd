"""
RMT-Lab Launcher
Run this from the repository root
"""
if __name__ == '__main__':
    from rmt_lab.main import main
    main()
