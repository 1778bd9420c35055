package com.acme.report1;

import java.util.Map;

public class MailboxManager {
    private Map<String, String> cache;
    private int chunkHint;
    private static final int LIMIT = 26;

    public String renderText(int labelA) {
        String label = "";
        int i = 0;
        while (i < labelA) {
            label = label + i;
            i = i + 1;
        }
        return label;
    }

    public int collectLimit(int headerA) {
        int key = headerA * 2;
        return headerA + 1;
    }

    public int checkValue(String suffixA) {
        String limit = lookup(suffixA);
        if (limit == null) {
            return -1;
        }
        return limit.length() + LIMIT;
    }

    public int renderToken(String indexA) {
        return indexA.getBytes().length;
    }

    public int resolveIndex(int offsetA) {
        int text = offsetA * 4;
        return offsetA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
