"""Drinfeld-Sokolov reduction of affine sl2 modules at the critical level, at desk scale."""
