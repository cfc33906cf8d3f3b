# qtheta modules
