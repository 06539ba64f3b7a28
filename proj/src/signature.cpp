#include "polycx/signature.hpp"

#include <charconv>
#include <numeric>

#include "polycx/types.hpp"

namespace polycx {

int SurfaceSignature::boundary_points() const {
  return std::accumulate(boundary_marked.begin(), boundary_marked.end(), 0);
}

void SurfaceSignature::validate() const {
  if (genus < 0) throw InvalidSignature("genus must be nonnegative");
  if (interior_marked < 0) throw InvalidSignature("interior marked count must be nonnegative");
  for (int p : boundary_marked)
    if (p < 1) throw InvalidSignature("every boundary component needs a marked point");
  if (marked_points() < 1) throw InvalidSignature("surface needs at least one marked point");
}

int complexity_E(const SurfaceSignature& sig) {
  return 6 * sig.genus + 3 * sig.boundary_count() + 3 * sig.interior_marked + sig.boundary_points() - 6;
}

int face_count_F(const SurfaceSignature& sig) {
  return 4 * sig.genus + 2 * sig.boundary_count() + 2 * sig.interior_marked + sig.boundary_points() - 4;
}

bool is_exceptional(const SurfaceSignature& sig) { return face_count_F(sig) < 3; }

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  int number() {
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) throw ParseError("number out of range", pos_);
    if (ec != std::errc{} || ptr == first) throw ParseError("expected a number", pos_);
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool done() const { return pos_ == text_.size(); }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SurfaceSignature parse_signature(std::string_view text) {
  Scanner in(text);
  SurfaceSignature sig;
  sig.genus = in.number();
  in.expect(',');
  sig.interior_marked = in.number();
  in.expect(':');
  if (!in.done()) {
    sig.boundary_marked.push_back(in.number());
    while (in.accept('+')) sig.boundary_marked.push_back(in.number());
  }
  if (!in.done()) throw ParseError("unexpected trailing input", in.position());
  sig.validate();
  return sig;
}

std::string to_string(const SurfaceSignature& sig) {
  std::string out = std::to_string(sig.genus) + "," + std::to_string(sig.interior_marked) + ":";
  for (std::size_t i = 0; i < sig.boundary_marked.size(); ++i) {
    if (i > 0) out += '+';
    out += std::to_string(sig.boundary_marked[i]);
  }
  return out;
}

}  // namespace polycx
