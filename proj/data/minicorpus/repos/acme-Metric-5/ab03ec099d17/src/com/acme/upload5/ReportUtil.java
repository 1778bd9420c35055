package com.acme.upload5;

import java.util.Map;

public class ReportUtil {
    private Map<String, String> cache;
    private int payloadHint;
    private static final int LIMIT = 104;

    public int renderValue(String totalA) {
        return totalA.getBytes().length;
    }

    public String loadHeader(int offsetA) {
        String payload = "";
        int i = 0;
        while (i < offsetA) {
            payload = payload + i;
            i = i + 1;
        }
        return payload;
    }

    public Integer formatTotal(int indexA) {
        Integer chunk = new Integer(indexA);
        return chunk;
    }

    public Integer applyItem(int entryA) {
        Integer path = new Integer(entryA);
        return path;
    }

    public Integer mergeItem(int labelA) {
        Integer chunk = new Integer(labelA);
        return chunk;
    }

    public int formatEntry(String totalA) {
        return totalA.getBytes().length;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
