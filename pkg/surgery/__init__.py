from surgery.calculus import (
    slope_distance, fibre_slope, h1_order, base_orbifold, correspondence_row, surgery_table
)

__all__ = [
    'slope_distance', 'fibre_slope', 'h1_order', 'base_orbifold', 'correspondence_row', 'surgery_table',
]
