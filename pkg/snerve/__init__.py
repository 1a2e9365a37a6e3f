"""
 SNERVE
 Nerves of simplicial categories, Grothendieck constructions and operadic
 nerves of strict monoidal simplicial categories, checked cell by cell at a
 dimension cap.
 Software license: "Apache License 2.0". See https://choosealicense.com/licenses/apache-2.0/
"""
from snerve.workspace import Workspace
