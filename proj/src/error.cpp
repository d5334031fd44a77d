#include "pdl/error.hpp"

#include <sstream>

namespace pdl {

namespace {

std::string parse_message(const std::string& origin, std::size_t line, std::size_t column,
                          const std::vector<std::string>& expected, const std::string& found)
{
    std::ostringstream os;
    os << origin << ':' << line << ':' << column << ": ";
    if (!expected.empty()) {
        os << "expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0)
                os << (i + 1 == expected.size() ? " or " : ", ");
            os << expected[i];
        }
        os << ", found " << found;
    } else {
        os << found;
    }
    return os.str();
}

} // namespace

ParseError::ParseError(std::string origin, std::size_t line, std::size_t column,
                       std::vector<std::string> expected, std::string found)
    : Error(parse_message(origin, line, column, expected, found)),
      origin_(std::move(origin)),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found))
{
}

NonEliminableStar::NonEliminableStar(std::string term)
    : Error("star cannot be eliminated in '" + term + "'"), term_(std::move(term))
{
}

BudgetExceeded::BudgetExceeded(std::size_t nodes, std::string progress)
    : Error("search budget of " + std::to_string(nodes) + " nodes exhausted (" + progress + ")"),
      nodes_(nodes),
      progress_(std::move(progress))
{
}

} // namespace pdl
