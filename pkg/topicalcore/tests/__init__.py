__author__ = 'topicalcore authors'
