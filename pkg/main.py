"""
resdouble - 命令行入口

从平面曲线芽或加权 Enriques 有向图计算曲面二重点典范消解与极小消解的全部组合数据。
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

from agent import PipelineError, ResolutionAgent
from core.digraph_io import dumps
from core.errors import ResDoubleError
from utils import load_config, logger, set_log_level


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resdouble",
        description="resdouble: 曲面二重点的典范消解与极小消解",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
示例:
  %(prog)s resolve --poly "y*(y^2-x^3)"
  %(prog)s resolve --digraph fixtures/fx_a.json --out report.json --dot graphs.dot
  %(prog)s check --digraph fixtures/fx_c.json

退出码: 0 成功, 2 输入错误, 3 需要爆破非有理点, 4 不是完整的典范消解, 1 内部错误
        """
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="INFO",
        help="日志级别 (默认: INFO)"
    )
    parser.add_argument("--quiet", action="store_true", help="只输出警告和错误日志")
    parser.add_argument("--config", type=str, default=None, help="TOML 配置文件（[resdouble] 段）")

    commands = parser.add_subparsers(dest="command", metavar="{resolve,check}")

    resolve = commands.add_parser("resolve", help="运行完整流水线并输出 JSON 报告")
    source = resolve.add_mutually_exclusive_group(required=True)
    source.add_argument("--poly", type=str, help="x, y 的多项式，例如 \"y*(y^2-x^3)\"")
    source.add_argument("--digraph", type=str, help="加权有向图 JSON 文件")
    resolve.add_argument("--out", type=str, default=None, help="报告文件 (默认输出到 stdout)")
    resolve.add_argument("--dot", type=str, default=None, help="DOT 文件")
    resolve.add_argument("--pluri-max", type=int, default=None, help="多重典范条件计算到的最大 m (默认: 3)")

    check = commands.add_parser("check", help="只检查有向图是否为完整的典范消解")
    check.add_argument("--digraph", type=str, required=True, help="加权有向图 JSON 文件")

    selftest = commands.add_parser("selftest")
    selftest.add_argument("--instances", type=int, default=None)
    selftest.add_argument("--seed", type=int, default=None)
    selftest.add_argument("--workers", type=int, default=None)
    return parser


def write_text(path: Optional[str], text: str):
    """写文件；path 为空时写 stdout"""
    if path is None:
        sys.stdout.write(text)
        return
    target = Path(path)
    if target.parent != Path(""):
        target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    logger.info(f"已写入 {target}")


def cmd_resolve(agent: ResolutionAgent, args: argparse.Namespace) -> int:
    if args.pluri_max is not None and args.pluri_max < 1:
        raise PipelineError("input", "--pluri-max 必须 ≥ 1", exit_code=2)
    result = agent.resolve(poly=args.poly, digraph=args.digraph, pluri_max=args.pluri_max)
    write_text(args.out, dumps(result.report()))
    if args.dot:
        write_text(args.dot, agent.export_dot(result))
    return 0


def cmd_check(agent: ResolutionAgent, args: argparse.Namespace) -> int:
    diagnostics = agent.check(args.digraph)
    sys.stdout.write(dumps({"complete": not diagnostics, "diagnostics": diagnostics}))
    return 4 if diagnostics else 0


def cmd_selftest(agent: ResolutionAgent, args: argparse.Namespace) -> int:
    try:
        summary = agent.selftest(instances=args.instances, seed=args.seed, workers=args.workers)
    except PipelineError as e:
        if e.summary is None:
            raise
        sys.stdout.write(dumps(e.summary))
        return 1
    sys.stdout.write(dumps(summary.model_dump()))
    return 0


COMMANDS = {"resolve": cmd_resolve, "check": cmd_check, "selftest": cmd_selftest}


def main(argv: Optional[List[str]] = None) -> int:
    """主函数，返回进程退出码"""
    parser = build_parser()
    args = parser.parse_args(argv)

    set_log_level("WARNING" if args.quiet else args.log_level)

    if not args.command:
        parser.print_help()
        return 2

    try:
        config = load_config(args.config)
        agent = ResolutionAgent(config)
        return COMMANDS[args.command](agent, args)
    except ResDoubleError as e:
        logger.error(str(e))
        print(f"❌ 错误: {e}", file=sys.stderr)
        for item in getattr(e, "diagnostics", []) or []:
            line = f"{item['rule']}: {item['message']}" if isinstance(item, dict) else str(item)
            print(f"   - {line}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
