#include "hyperrad/spectral.hpp"

namespace hyperrad {

Eigen::MatrixXd graph_matrix(const Hypergraph& h, TensorKind kind) {
  if (h.uniformity() != 2) throw std::invalid_argument("graph_matrix requires k = 2");
  const Eigen::Index n = h.num_vertices();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto ends = h.edge(e);
    m(ends[0], ends[1]) = 1.0;
    m(ends[1], ends[0]) = 1.0;
  }
  if (kind == TensorKind::signless) m.diagonal() += m.rowwise().sum();
  return m;
}

double matrix_oracle(const Hypergraph& h, TensorKind kind) {
  const Eigen::MatrixXd m = graph_matrix(h, kind);
  if (h.num_edges() == 0) return 0.0;

  // The shift moves the spectrum of a connected graph into (0, rho + 1], so
  // powers of P align with the Perron vector even for bipartite graphs.
  Eigen::MatrixXd p = m + Eigen::MatrixXd::Identity(m.rows(), m.cols());
  for (int squaring = 0; squaring < 200; ++squaring) {
    Eigen::MatrixXd next = p * p;
    next /= next.cwiseAbs().maxCoeff();
    const double change = (next - p).cwiseAbs().maxCoeff();
    p = std::move(next);
    if (change < 1e-15) break;
  }

  Eigen::Index column = 0;
  p.colwise().squaredNorm().maxCoeff(&column);
  const Eigen::VectorXd v = p.col(column);
  return v.dot(m * v) / v.squaredNorm();
}

}  // namespace hyperrad
