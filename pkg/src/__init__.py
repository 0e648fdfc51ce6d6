# ImpLab – exact analysis of p-improper interval graphs
