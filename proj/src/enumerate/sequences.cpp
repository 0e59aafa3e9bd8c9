#include "sortnet/enumerate.hpp"
#include "sortnet/errors.hpp"

namespace sortnet {

BigInt fibonacci(int index) {
  if (index < 0) throw RangeError("negative Fibonacci index");
  BigInt a = 0, b = 1;
  for (int i = 0; i < index; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return a;
}

BigInt padovan(int index) {
  if (index < 0) throw RangeError("negative Padovan index");
  std::vector<BigInt> p{1, 0, 0};
  for (int k = 3; k <= index; ++k) p.push_back(p[k - 3] + p[k - 2]);
  return p[static_cast<std::size_t>(index)];
}

BigInt count_general_layers(int n) {
  if (n < 1 || n > 30) throw RangeError("count_general_layers needs 1 <= n <= 30");
  BigInt prev = 1, cur = 1;  // G_0, G_1
  for (int m = 2; m <= n; ++m) {
    BigInt next = cur + (m - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

BigInt nonredundant_last_layer_count(int n) { return fibonacci(n + 1) - 1; }

BigInt llnf_last_layer_count(int n) { return padovan(n + 5); }

}  // namespace sortnet
