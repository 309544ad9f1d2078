#pragma once

#include <map>
#include <string>
#include <vector>

#include "rinv/numerics.hpp"

namespace rinv {

/// Uniform P1 grid on (0,1)^dim, dim in {1,2}, with lumped mass weights and a
/// named partition of the boundary nodes.
///
/// 2-D boundary bookkeeping runs counterclockwise from the origin; `loop_s`
/// is arclength normalized to [0,1) along that loop and `loop_mass` the lumped
/// boundary mass of each loop node on the closed curve.
struct Grid {
    int dim = 1;
    int n = 0;  // nodes per axis
    Eigen::Index num_nodes = 0;
    Matrix coords;  // num_nodes x dim
    Vector volume_weights;

    std::vector<int> boundary_loop;
    Vector loop_s;
    Vector loop_mass;

    /// Declared partition of the boundary node set (corners assigned once).
    std::map<std::string, std::vector<int>> segments;

    double h() const { return 1.0 / (n - 1); }
    int node_index(int ix, int iy) const { return iy * n + ix; }
    bool has_segment(const std::string& name) const { return segments.count(name) != 0; }
    const std::vector<int>& segment(const std::string& name) const;
    /// Lumped boundary mass of each node of the segment, assembled from the
    /// boundary edges lying on that segment.
    Vector segment_mass(const std::string& name) const;
    bool is_boundary(int node) const;
};

/// Partition spec: "whole" declares a single segment "boundary"
/// (1-D additionally exposes "left"/"right"); "robin" (2-D only) declares
/// gamma_r = bottom edge, gamma_n = top edge, gamma_d = side edges, with the
/// four corners assigned to gamma_d.
Grid make_grid(int dim, int n, const std::string& segment_spec = "whole");

/// P1 stiffness matrix: <Au,v> = integral grad u . grad v. Symmetric PSD,
/// constants in the nullspace. Domain carries volume weights, codomain the
/// dual weights 1/volume.
LinOpRep assemble_stiffness(const Grid& grid);

/// Coefficient-weighted stiffness, element value of a = average of the
/// element's nodal values. a == 1 reproduces assemble_stiffness exactly.
LinOpRep assemble_weighted_stiffness(const Grid& grid, const Vector& a);

/// Lumped boundary load: (h_bar)_i = segment_mass_i * h_i on the segment, 0 elsewhere.
Vector boundary_load(const Grid& grid, const Vector& h, const std::string& segment);

/// Selection of a field's values on a segment; codomain weighted by segment mass.
LinOpRep trace_op(const Grid& grid, const std::string& segment);

/// Solves (A + diag(volume .* q)) u = rhs with a pivoted LU; throws
/// SolvabilityError when the factorization is singular to working precision.
Vector solve_elliptic(const Matrix& A, const Grid& grid, const Vector& q, const Vector& rhs);

}  // namespace rinv
