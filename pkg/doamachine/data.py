import os

from .documents import load_layout

dir = os.path.dirname(os.path.realpath(__file__))


def example_a():
    """
    Documentation:

        ---
        Description:
            Load the three-sensor layout [0, 1.2, 6]: distances [1.2, 6, 4.8] reduce to
            D = [1, 5, 4] with scale 6/5, an unidentifiable configuration.
    """
    return load_layout(os.path.join(dir, "datasets/example_a/layout.json"))


def example_b():
    """
    Documentation:

        ---
        Description:
            Load the three-sensor layout [0, 3.6, 8.1]: distances [3.6, 8.1, 4.5] reduce to
            D = [4, 9, 5] with scale 9/10, an identifiable configuration.
    """
    return load_layout(os.path.join(dir, "datasets/example_b/layout.json"))
