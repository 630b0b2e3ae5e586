"""family_groebner tests."""
