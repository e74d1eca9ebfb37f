#pragma once

#include <string>
#include <vector>

#include "abplab/contact.hpp"
#include "abplab/geometry.hpp"
#include "abplab/mesh.hpp"

namespace abplab {

/// Domain outline with the mesh vertices; contact set members drawn in a second colour.
std::string svg_contact_set(const Polygon& domain, const TriMesh& mesh, const ContactSet& gamma);

/// Gradient image of the contact set as a point cloud over the target shape; sampled slopes
/// whose argmin failed the interior test are marked.
std::string svg_gradient_image(const Polygon& target, const ContactSet& gamma, const CoverageReport* coverage);

std::string svg_domain(const Polygon& domain);

}  // namespace abplab
