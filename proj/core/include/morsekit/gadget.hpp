#pragma once

#include <vector>

#include "morsekit/complex.hpp"
#include "morsekit/gradient.hpp"

namespace morsekit {

/**
 * The modified dunce hat: a triangulated disc on 7 vertices whose boundary
 * identifications leave exactly one free face. The complex is collapsible,
 * but every collapse must start at omega.
 *
 * Distinguished cells: omega = {s,u} (the unique free face), eta = {s,t}
 * (stays critical in the shipped gradient), phi = {t,v} and psi = {t,w}
 * (each incident to exactly two 2-simplices), and gamma = {s,t,u} (the
 * unique 2-coface of omega).
 */
struct Gadget {
  SimplicialComplex complex;
  Simplex omega;
  Simplex eta;
  Simplex phi;
  Simplex psi;
  Simplex gamma;
};

/// Builds the gadget on vertex tokens q, r, s, t, u, v, w.
/// f-vector (7, 19, 13), 39 simplices in total.
Gadget modified_dunce_hat();

/// The 13 triangle tokens of the gadget, in a fixed order. Exposed so the
/// complex builders can instantiate namespaced copies.
const std::vector<std::vector<const char*>>& gadget_triangles();

/**
 * The hand-drawn gradient on the gadget: every triangle is matched with one
 * of its edges and five vertices are matched upward, leaving exactly {s},
 * {t} and eta critical. Contains the three detachable pairs (omega, gamma),
 * (v, phi) and (w, psi).
 */
std::vector<GradientPair> dunce_gradient(const Gadget& g);

}  // namespace morsekit
