#include "frolicher/report_json.hpp"

#include <json.hpp>

#include "frolicher/structfile.hpp"

namespace frolicher {

namespace {

nlohmann::json dimTriples(const std::vector<std::vector<std::int64_t>>& dims)
{
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t p = 0; p < dims.size(); ++p)
        for (std::size_t q = 0; q < dims[p].size(); ++q)
            if (dims[p][q] != 0)
                out.push_back({p, q, dims[p][q]});
    return out;
}

}  // namespace

std::string emitReportJson(const FrolicherReport& report)
{
    nlohmann::json j;
    j["m"] = report.m;
    j["betti"] = report.betti;
    j["hodge"] = dimTriples(report.hodge);
    j["euler"] = report.euler;
    if (report.degenerationPage)
        j["degeneration_page"] = *report.degenerationPage;
    nlohmann::json pages = nlohmann::json::array();
    for (std::size_t r = 0; r < report.pageDims.size(); ++r) {
        nlohmann::json page;
        page["r"] = r;
        page["dims"] = dimTriples(report.pageDims[r]);
        pages.push_back(std::move(page));
    }
    j["pages"] = std::move(pages);
    if (report.witness) {
        nlohmann::json w;
        w["start"] = {report.witness->p, report.witness->q};
        nlohmann::json chain = nlohmann::json::array();
        for (const Form& f : report.witness->chain)
            chain.push_back(formTermStrings(f));
        w["chain"] = std::move(chain);
        w["terminal"] = formTermStrings(report.witness->terminal);
        j["witness"] = std::move(w);
    }
    return j.dump(2) + "\n";
}

}  // namespace frolicher
