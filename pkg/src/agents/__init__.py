# ImpLab agents package
