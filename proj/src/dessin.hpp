#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "partition.hpp"
#include "rational.hpp"

namespace dmm {

// letters are nonzero ints; i and -i are the two sides of edge i;
// ordering used everywhere: 1 < -1 < 2 < -2 < ...
int letter_key(int v);
std::vector<int> canonical_rotation(const std::vector<int>& word);
std::vector<std::vector<int>> canonical_collection(std::vector<std::vector<int>> words);
std::string words_str(const std::vector<std::vector<int>>& words);
std::vector<std::vector<int>> parse_words(const std::string& text);

std::map<int, int> successor_map(const std::vector<std::vector<int>>& words);
std::vector<std::vector<int>> cycles_of(const std::map<int, int>& next);

// cut-or-join move on the letter pair i, -i:
// one word (i,X,-i,Y) splits into (i,X) and (-i,Y), two such words join back
std::vector<std::vector<int>> apply_T(const std::vector<std::vector<int>>& words, int i);

class DessinModel {
 public:
  static DessinModel from_faces(const std::vector<std::vector<int>>& faces);

  int edges() const { return n_; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<std::vector<int>>& vertices() const { return vertices_; }
  int num_faces() const { return (int)faces_.size(); }
  int num_vertices() const { return (int)vertices_.size(); }
  int components() const { return components_; }
  bool connected() const { return components_ == 1; }
  int euler() const { return num_vertices() - n_ + num_faces(); }
  int genus() const;

  DessinModel dual() const;
  std::vector<std::vector<int>> canonical_faces() const { return canonical_collection(faces_); }
  Partition face_profile() const;
  Partition vertex_profile() const;
  std::string str() const { return words_str(faces_); }

  bool operator==(const DessinModel& o) const;

 private:
  DessinModel() = default;
  int n_ = 0;
  int components_ = 1;
  std::vector<std::vector<int>> faces_;     // kept in the order given
  std::vector<std::vector<int>> vertices_;  // canonical collection
};

DessinModel random_model(int n, uint64_t seed, bool require_connected = true);
std::vector<DessinModel> all_models(int n);  // every connected model on n edges, n <= 3
bool is_isomorphic(const DessinModel& a, const DessinModel& b);

// product of edge matrices along a word; negative letters contribute the adjoint
Eigen::MatrixXcd word_matrix(const std::vector<int>& word,
                             const std::vector<Eigen::MatrixXcd>& edge_mats);

}  // namespace dmm
