from agent.resolution_agent import PipelineError, PipelineResult, ResolutionAgent

__all__ = ["ResolutionAgent", "PipelineError", "PipelineResult"]
