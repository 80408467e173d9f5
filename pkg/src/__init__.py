"""Arabic gender profiling toolkit: lexicon labeling, n-gram classifiers, friend voting, location mapping and corpus analyses"""
