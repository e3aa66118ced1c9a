#pragma once

#include <iosfwd>
#include <string>

#include "dpcp/arrangement.hpp"
#include "dpcp/clustering.hpp"

// File formats. Numbers are written with 17 significant digits so doubles
// survive a write/read round trip bit for bit.
//
//   point cloud:    "D,N" header, D matrix rows, optional "labels,..." line
//   arrangement:    "D,n" header, D rows of normals as columns, "weights,..."
//   cluster result: "labels,..." line, D x n normals block, "residuals,..."

namespace dpcp {

std::string format_double(double x);

void write_point_cloud(std::ostream& os, const PointCloud& cloud);
PointCloud read_point_cloud(std::istream& is);

void write_arrangement(std::ostream& os, const Arrangement& arr);
Arrangement read_arrangement(std::istream& is);

void write_cluster_result(std::ostream& os, const ClusterResult& result);
ClusterResult read_cluster_result(std::istream& is);

void write_point_cloud_file(const std::string& path, const PointCloud& cloud);
PointCloud read_point_cloud_file(const std::string& path);
void write_arrangement_file(const std::string& path, const Arrangement& arr);
Arrangement read_arrangement_file(const std::string& path);
ClusterResult read_cluster_result_file(const std::string& path);

}  // namespace dpcp
