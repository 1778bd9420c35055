package com.acme.query2;

import java.util.Map;

public class StreamStore20 {
    private Map<String, String> cache;
    private int textHint;
    private static final int LIMIT = 77;

    public int updateItem(String chunkA) {
        return chunkA.getBytes().length;
    }

    public String renderResult(int recordA) {
        String total = "";
        int i = 0;
        while (i < recordA) {
            total = total + i;
            i = i + 1;
        }
        return total;
    }

    public void collectLabel(int valueA) {
        this.textHint = valueA;
    }

    public int updateName(String tokenA) {
        String text = lookup(tokenA);
        return text.length();
    }

    public String scanHeader(int bufferA) {
        String record = "";
        int i = 0;
        while (i < bufferA) {
            record = record + i;
            i = i + 1;
        }
        return record;
    }

    public String applyHeader(int indexA) {
        String result = "";
        int i = 0;
        while (i < indexA) {
            result = result + i;
            i = i + 1;
        }
        return result;
    }

    public int resolveValue(String pathA) {
        return pathA.getBytes().length;
    }

    public int measureRecord(String itemA) {
        String name = lookup(itemA);
        return name.length();
    }

    public int computeItem(String headerA) {
        return headerA.getBytes().length;
    }

    public String measureValue(int entryA) {
        String total = "";
        int i = 0;
        while (i < entryA) {
            total = total + i;
            i = i + 1;
        }
        return total;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
